// v, kappa, log(I_v(kappa)) - kappa
pub const LOG_IV_SCALED: &[(f64, f64, f64)] = &[
    (0.0, 1e-06, -9.9999974999999995476e-7),
    (0.0, 0.001, -0.00099975000001562501907),
    (0.0, 0.1, -0.097501560766123761893),
    (0.0, 0.5, -0.43845028081451869606),
    (0.0, 1.0, -0.76408564149282135131),
    (0.0, 2.5, -1.3091613288039719797),
    (0.0, 5.0, -1.6953182241774665662),
    (0.0, 10.0, -2.0570279168813044455),
    (0.0, 19.0, -2.384395575801439537),
    (0.0, 20.0, -2.4103895717557257092),
    (0.0, 30.0, -2.6152985668280641501),
    (0.0, 45.0, -2.8194603956928637998),
    (0.0, 49.0, -2.8622710592540807509),
    (0.0, 51.0, -2.8823758335099210079),
    (0.0, 60.0, -2.9640098103448573933),
    (0.0, 100.0, -3.2202673100574162833),
    (0.0, 250.0, -3.6791679879429124672),
    (0.0, 500.0, -4.025992331893303539),
    (0.0, 1000.0, -4.3726911101305353285),
    (0.0, 5000.0, -5.1775101264122704592),
    (0.0, 10000.0, -5.5240962185676989955),
    (0.0, 100000.0, -6.6754000156835368867),
    (0.0, 1000000.0, -7.8266936871867472938),
    (0.5, 1e-06, -7.1335476316266978404),
    (0.5, 0.001, -3.6806688254691348369),
    (0.5, 0.1, -1.4754177876781697915),
    (0.5, 0.5, -1.0310400883117819781),
    (0.5, 1.0, -1.0643519910735317988),
    (0.5, 2.5, -1.3838446485912388322),
    (0.5, 5.0, -1.7237028903820934183),
    (0.5, 10.0, -2.0702310817628492084),
    (0.5, 19.0, -2.3911580227878930032),
    (0.5, 20.0, -2.4168046699816682427),
    (0.5, 30.0, -2.6195372240357504295),
    (0.5, 45.0, -2.8222697780898326205),
    (0.5, 49.0, -2.8648486822599860469),
    (0.5, 51.0, -2.8848513495668356276),
    (0.5, 60.0, -2.9661108143157230842),
    (0.5, 100.0, -3.2215236261987184258),
    (0.5, 250.0, -3.6796689921357959584),
    (0.5, 500.0, -4.0262425824157686131),
    (0.5, 1000.0, -4.3728161726957412678),
    (0.5, 5000.0, -5.1775351289127914551),
    (0.5, 10000.0, -5.5241087191927641098),
    (0.5, 100000.0, -6.6754012656897869518),
    (0.5, 1000000.0, -7.8266938121868097938),
    (1.0, 1e-06, -14.508658738524094459),
    (1.0, 0.001, -7.6019023345420849448),
    (1.0, 0.1, -3.0944825338622048897),
    (1.0, 0.5, -1.8552054470253344645),
    (1.0, 1.0, -1.5706479874908312814),
    (1.0, 2.5, -1.5770450254865064549),
    (1.0, 5.0, -1.8080579694543245366),
    (1.0, 10.0, -2.1097961658957877065),
    (1.0, 19.0, -2.4114399643452297241),
    (1.0, 20.0, -2.4360453774806556962),
    (1.0, 30.0, -2.6322519107175924855),
    (1.0, 45.0, -2.8306975579860607717),
    (1.0, 49.0, -2.8725812684225273041),
    (1.0, 51.0, -2.8922776475055136025),
    (1.0, 60.0, -2.9724136739696689517),
    (1.0, 100.0, -3.2252925424085515372),
    (1.0, 250.0, -3.6811720026901792537),
    (1.0, 500.0, -4.0269933337316555362),
    (1.0, 1000.0, -4.3731913603600150771),
    (1.0, 5000.0, -5.1776101364141042927),
    (1.0, 10000.0, -5.5241462210679281934),
    (1.0, 100000.0, -6.6754050157085371159),
    (1.0, 1000000.0, -7.826694187186997294),
    (1.5, 1e-06, -22.047670478259148348),
    (1.5, 0.001, -11.687036459786044099),
    (1.5, 0.1, -4.8772814236187356354),
    (1.5, 0.5, -2.8392130423923242719),
    (1.5, 1.0, -2.2257913526447274324),
    (1.5, 2.5, -1.8723099549946198372),
    (1.5, 5.0, -1.9467329431599815149),
    (1.5, 10.0, -2.1755915928403341274),
    (1.5, 19.0, -2.4452252440581687047),
    (1.5, 20.0, -2.4680979643692187672),
    (1.5, 30.0, -2.6534387757114317777),
    (1.5, 45.0, -2.844742633941891215),
    (1.5, 49.0, -2.885467969462721728),
    (1.5, 51.0, -2.9046539768630153406),
    (1.5, 60.0, -2.9829179326321043184),
    (1.5, 100.0, -3.231573962052219867),
    (1.5, 250.0, -3.6836770135333347767),
    (1.5, 500.0, -4.0282445850864416905),
    (1.5, 1000.0, -4.3738166730293248013),
    (1.5, 5000.0, -5.1777351489154585218),
    (1.5, 10000.0, -5.5242087241930974682),
    (1.5, 100000.0, -6.6754112657397872852),
    (1.5, 1000000.0, -7.8266948121873097942),
    (2.0, 1e-06, -29.710463657608300894),
    (2.0, 0.001, -15.895952016310777525),
    (2.0, 0.1, -6.7837784811208645626),
    (2.0, 0.5, -3.9449565235755461209),
    (2.0, 1.0, -2.9969574859357673329),
    (2.0, 2.5, -2.2559045621828669459),
    (2.0, 5.0, -2.1374783152978943007),
    (2.0, 10.0, -2.2674032859585748013),
    (2.0, 19.0, -2.4924870729154429728),
    (2.0, 20.0, -2.5129396523761835611),
    (2.0, 30.0, -2.6830914125886593752),
    (2.0, 45.0, -2.864403171704296243),
    (2.0, 49.0, -2.9035073725365795377),
    (2.0, 51.0, -2.9219790876446864199),
    (2.0, 60.0, -2.9976228295163974668),
    (2.0, 100.0, -3.2403677240969728959),
    (2.0, 250.0, -3.6871840145442964208),
    (2.0, 500.0, -4.0299963352225969808),
    (2.0, 1000.0, -4.3746921105469507516),
    (2.0, 5000.0, -5.1779101664156033921),
    (2.0, 10000.0, -5.5242962285681156371),
    (2.0, 100000.0, -6.6754200157835373034),
    (2.0, 1000000.0, -7.8266956871877472942),
    (2.5, 1e-06, -37.472618948657551443),
    (2.5, 0.001, -20.204229679773709215),
    (2.5, 0.1, -8.7895900571972940401),
    (2.5, 0.5, -5.1488876405687437878),
    (2.5, 1.0, -3.8629702657767536389),
    (2.5, 2.5, -2.7167149198270615051),
    (2.5, 5.0, -2.3777341371033250653),
    (2.5, 10.0, -2.38494182829664832),
    (2.5, 19.0, -2.5531882335335767813),
    (2.5, 20.0, -2.5705387699237103158),
    (2.5, 30.0, -2.7212008778122505888),
    (2.5, 45.0, -2.8896766064211492866),
    (2.5, 49.0, -2.9266975016637035742),
    (2.5, 51.0, -2.944251231487374596),
    (2.5, 60.0, -3.0165273002297391233),
    (2.5, 100.0, -3.2516736031496016993),
    (2.5, 250.0, -3.6916929915542293041),
    (2.5, 500.0, -4.0322485823795952356),
    (2.5, 1000.0, -4.3758176726934858588),
    (2.5, 5000.0, -5.1781351889127878534),
    (2.5, 10000.0, -5.5244087341927638848),
    (2.5, 100000.0, -6.6754312658397869518),
    (2.5, 1000000.0, -7.8266968121883097938),
    (3.0, 1e-06, -45.317733684800650877),
    (3.0, 0.001, -24.595466785354302413),
    (3.0, 0.1, -10.878331328947103417),
    (3.0, 0.5, -6.4350418822463926495),
    (3.0, 1.0, -4.8090863032394225),
    (3.0, 2.5, -3.2457668093443534462),
    (3.0, 5.0, -2.664836380457564739),
    (3.0, 10.0, -2.5278513828513725002),
    (3.0, 19.0, -2.6272813596344901721),
    (3.0, 20.0, -2.6408549648939677311),
    (3.0, 30.0, -2.7677557159508879494),
    (3.0, 45.0, -2.9205596457305845065),
    (3.0, 49.0, -2.9550358197216002172),
    (3.0, 51.0, -2.9714681632836445438),
    (3.0, 60.0, -3.0396299774800226235),
    (3.0, 100.0, -3.2654913095090394083),
    (3.0, 250.0, -3.6972039263469473739),
    (3.0, 500.0, -4.0350013242939301684),
    (3.0, 1000.0, -4.3771933591868361692),
    (3.0, 5000.0, -5.1784102164047605555),
    (3.0, 10000.0, -5.5245462410667608766),
    (3.0, 100000.0, -6.6754450159085359492),
    (3.0, 1000000.0, -7.8266981871889972928),
    (4.5, 1e-06, -69.246774790977658404),
    (4.5, 0.001, -38.162874990103541531),
    (4.5, 0.1, -17.538154669049043611),
    (4.5, 0.5, -10.684784869527689181),
    (4.5, 1.0, -8.031679395484457789),
    (4.5, 2.5, -5.1754907050740042719),
    (4.5, 5.0, -3.7814446510606914187),
    (4.5, 10.0, -3.1044611243150508733),
    (4.5, 19.0, -2.9292943809907003009),
    (4.5, 20.0, -2.9275782117706153123),
    (4.5, 30.0, -2.9579409544202911847),
    (4.5, 45.0, -3.0468226439235407669),
    (4.5, 49.0, -3.0709061766250847165),
    (4.5, 51.0, -3.0827578310077695347),
    (4.5, 60.0, -3.134109052464008227),
    (4.5, 100.0, -3.3220115323230666925),
    (4.5, 250.0, -3.7197482345646920421),
    (4.5, 500.0, -4.0462624884016532967),
    (4.5, 1000.0, -4.3828211609865498815),
    (4.5, 5000.0, -5.1795353288193901138),
    (4.5, 10000.0, -5.5251087691810931929),
    (4.5, 100000.0, -6.6755012661897752847),
    (4.5, 1000000.0, -7.8267038121918097822),
    (5.0, 1e-06, -77.330781435403101621),
    (5.0, 0.001, -42.793003998825791155),
    (5.0, 0.1, -19.865736456285266584),
    (5.0, 0.5, -12.208554618785102096),
    (5.0, 1.0, -9.2116841332982911445),
    (5.0, 2.5, -5.916002178680414285),
    (5.0, 5.0, -4.2308299278014789456),
    (5.0, 10.0, -3.3443173541449546421),
    (5.0, 19.0, -3.0562921713439570392),
    (5.0, 20.0, -3.0481958842126795088),
    (5.0, 30.0, -3.0381137507538075113),
    (5.0, 45.0, -3.1000967839344453186),
    (5.0, 49.0, -3.1198007572858787475),
    (5.0, 51.0, -3.1297216109215245562),
    (5.0, 60.0, -3.173984860828427568),
    (5.0, 100.0, -3.3458723674199185526),
    (5.0, 250.0, -3.7292667374060576441),
    (5.0, 500.0, -4.0510171766514837462),
    (5.0, 1000.0, -4.3851973407925090437),
    (5.0, 5000.0, -5.1800103762579962906),
    (5.0, 10000.0, -5.5253462810484214433),
    (5.0, 100000.0, -6.6755250163085176152),
    (5.0, 1000000.0, -7.8267061871929972745),
    (9.0, 1e-06, -143.37974812679941974),
    (9.0, 0.001, -81.210949590960210706),
    (9.0, 0.1, -39.863167944908218238),
    (9.0, 0.5, -25.772228504496764075),
    (9.0, 1.0, -20.015180435586258157),
    (9.0, 2.5, -13.138376413052991154),
    (9.0, 5.0, -8.9468360680857750739),
    (9.0, 10.0, -6.042634815427902239),
    (9.0, 19.0, -4.5317964697296587193),
    (9.0, 20.0, -4.4515265074953756722),
    (9.0, 30.0, -3.9777432819308556744),
    (9.0, 45.0, -3.7265376731802269662),
    (9.0, 49.0, -3.6949803664465937925),
    (9.0, 51.0, -3.6822821444114341477),
    (9.0, 60.0, -3.6434165800281113431),
    (9.0, 100.0, -3.6270334982705907545),
    (9.0, 250.0, -3.8414756996790797165),
    (9.0, 500.0, -4.1070713079802014666),
    (9.0, 1000.0, -4.4132111079127451596),
    (9.0, 5000.0, -5.1856109343995163569),
    (9.0, 10000.0, -5.5281464208161830704),
    (9.0, 100000.0, -6.6758050177082854414),
    (9.0, 1000000.0, -7.8267341872069970423),
    (10.0, 1e-06, -160.19099095831768716),
    (10.0, 0.001, -91.114437145769065996),
    (10.0, 0.1, -45.161508038040305643),
    (10.0, 0.5, -29.461675710436745888),
    (10.0, 1.0, -23.013178577973041788),
    (10.0, 2.5, -15.231760293765853578),
    (10.0, 5.0, -10.386046582393018846),
    (10.0, 10.0, -6.9138921488930311302),
    (10.0, 19.0, -5.0239209067043032781),
    (10.0, 20.0, -4.9203061602690818363),
    (10.0, 30.0, -4.2942801918576705705),
    (10.0, 45.0, -3.9384045331094758284),
    (10.0, 49.0, -3.8896076091440610369),
    (10.0, 51.0, -3.8692943828444050068),
    (10.0, 60.0, -3.8024039241879964075),
    (10.0, 100.0, -3.722366634346061818),
    (10.0, 250.0, -3.8795427553177690328),
    (10.0, 500.0, -4.1260891962192107534),
    (10.0, 1000.0, -4.422715719350023134),
    (10.0, 5000.0, -5.1875111232936766768),
    (10.0, 10000.0, -5.5290964681779951272),
    (10.0, 100000.0, -6.6759000181831472913),
    (10.0, 1000000.0, -7.8267436872117469042),
    (19.5, 1e-06, -323.75032787575306536),
    (19.5, 0.001, -189.0500989234062818),
    (19.5, 0.1, -99.3481583579599695),
    (19.5, 0.5, -68.361192452006059142),
    (19.5, 1.0, -55.335679329629397025),
    (19.5, 2.5, -38.904116707859877905),
    (19.5, 5.0, -27.661077174879563236),
    (19.5, 10.0, -18.260256836388827276),
    (19.5, 19.0, -11.89178210298804555),
    (19.5, 20.0, -11.490014303437685977),
    (19.5, 30.0, -8.8441877059214312913),
    (19.5, 45.0, -7.025736667997315188),
    (19.5, 49.0, -6.7309347228333450142),
    (19.5, 51.0, -6.601549573964725527),
    (19.5, 60.0, -6.1312430341372661879),
    (19.5, 100.0, -5.1249898312550766675),
    (19.5, 250.0, -4.4408060885461408769),
    (19.5, 500.0, -4.4065749431736735679),
    (19.5, 1000.0, -4.5629052337615447736),
    (19.5, 5000.0, -5.2155388815110098099),
    (19.5, 10000.0, -5.543109663269313054),
    (19.5, 100000.0, -6.6773012751838651061),
    (19.5, 1000000.0, -7.8268838122818038721),
    (31.0, 1e-06, -527.86061444756610604),
    (31.0, 0.001, -313.72119979130736319),
    (31.0, 0.1, -171.05984590858150694),
    (31.0, 0.5, -121.56539568082593674),
    (31.0, 1.0, -100.57197457516550346),
    (31.0, 2.5, -73.625981392612105251),
    (31.0, 5.0, -54.492471968719966378),
    (31.0, 10.0, -37.427374064197923471),
    (31.0, 19.0, -24.590777228427472535),
    (31.0, 20.0, -23.719474286938347332),
    (31.0, 30.0, -17.708672427799369605),
    (31.0, 45.0, -13.223752387135759257),
    (31.0, 49.0, -12.460423826700861775),
    (31.0, 51.0, -12.121516034056850719),
    (31.0, 60.0, -10.86702682177929481),
    (31.0, 100.0, -8.0110249202931591071),
    (31.0, 250.0, -5.6025477227823627109),
    (31.0, 500.0, -4.9876460819152214935),
    (31.0, 1000.0, -4.8533930361713023141),
    (31.0, 5000.0, -5.2736194304735209983),
    (31.0, 10000.0, -5.5721485828365338939),
    (31.0, 100000.0, -6.6802050396703159668),
    (31.0, 1000000.0, -7.8271741874269590739),
    (49.5, 1e-06, -864.69781454766948548),
    (49.5, 0.001, -522.76492723310320804),
    (49.5, 0.1, -294.90795352671647717),
    (49.5, 0.5, -215.63958875726336511),
    (49.5, 1.0, -181.82509067129443968),
    (49.5, 2.5, -137.94271839368476146),
    (49.5, 5.0, -106.03925013127527912),
    (49.5, 10.0, -76.359379275253847737),
    (49.5, 19.0, -52.322865841656989096),
    (49.5, 20.0, -50.597373889913474389),
    (49.5, 30.0, -38.18913755109519441),
    (49.5, 45.0, -28.165229184010369515),
    (49.5, 49.0, -26.37374114231759625),
    (49.5, 51.0, -25.56923417016950856),
    (49.5, 60.0, -22.539556012816791593),
    (49.5, 100.0, -15.293264924368757221),
    (49.5, 250.0, -8.5734974939610625155),
    (49.5, 500.0, -6.4766905267111970302),
    (49.5, 1000.0, -5.5981786143851751448),
    (49.5, 5000.0, -5.422557631838656455),
    (49.5, 10000.0, -5.646614594627976543),
    (49.5, 100000.0, -6.6876513266902878094),
    (49.5, 1000000.0, -7.8279188127990603014),
    (50.0, 1e-06, -873.9106548779840001),
    (50.0, 0.001, -528.52388992397518832),
    (50.0, 0.1, -298.36433160988784082),
    (50.0, 0.5, -218.29125953201167613),
    (50.0, 1.0, -184.13022425000768342),
    (50.0, 2.5, -139.78996114960965113),
    (50.0, 5.0, -107.54082530151299029),
    (50.0, 10.0, -77.517957737694268383),
    (50.0, 19.0, -53.172416499005321985),
    (50.0, 20.0, -51.422987859987762216),
    (50.0, 30.0, -38.832581774397343393),
    (50.0, 45.0, -28.64504780305362756),
    (50.0, 49.0, -26.82238511920996944),
    (50.0, 51.0, -26.003667898287619775),
    (50.0, 60.0, -22.919258848010015403),
    (50.0, 100.0, -15.533756564821217476),
    (50.0, 250.0, -8.6725443978595530218),
    (50.0, 500.0, -6.5264081662936754884),
    (50.0, 1000.0, -5.6230557845413151783),
    (50.0, 5000.0, -5.4275330473092159576),
    (50.0, 10000.0, -5.6491022087520319983),
    (50.0, 100000.0, -6.6879000779237895211),
    (50.0, 1000000.0, -7.8279436878114875534),
    (63.0, 1e-06, -1115.0547549263073487),
    (63.0, 0.001, -679.86717134652646414),
    (63.0, 0.1, -389.84041057069469329),
    (63.0, 0.5, -288.84488459467044722),
    (63.0, 1.0, -245.6736826419241201),
    (63.0, 2.5, -189.42686318669916574),
    (63.0, 5.0, -148.18541725644034926),
    (63.0, 10.0, -109.22526750663525273),
    (63.0, 19.0, -76.782654019510461027),
    (63.0, 20.0, -74.402167509422277632),
    (63.0, 30.0, -56.975447740483588929),
    (63.0, 45.0, -42.365684032911122741),
    (63.0, 49.0, -39.68834221970873847),
    (63.0, 51.0, -38.478503052061211837),
    (63.0, 60.0, -33.878034028234576106),
    (63.0, 100.0, -22.55987935464599367),
    (63.0, 250.0, -11.59139453062827653),
    (63.0, 500.0, -7.9937124506846411453),
    (63.0, 1000.0, -6.3575268740177069032),
    (63.0, 5000.0, -5.5744445711255550602),
    (63.0, 10000.0, -5.7225554855802870457),
    (63.0, 100000.0, -6.695245114253218853),
    (63.0, 1000000.0, -7.8286781881783419934),
    (100.0, 1e-06, -1814.6051504079854335),
    (100.0, 0.001, -1123.8306215072964767),
    (100.0, 0.1, -663.41257815849033977),
    (100.0, 0.5, -502.86819285754844762),
    (100.0, 1.0, -434.05161839406588626),
    (100.0, 2.5, -343.90955130006464825),
    (100.0, 5.0, -277.04843993599690559),
    (100.0, 10.0, -212.54835893742074136),
    (100.0, 19.0, -156.72050078773291875),
    (100.0, 20.0, -152.49551210817579275),
    (100.0, 30.0, -120.73028527977584533),
    (100.0, 45.0, -92.491287836479943588),
    (100.0, 49.0, -87.09008229104192383),
    (100.0, 51.0, -84.621394493864973413),
    (100.0, 60.0, -75.059168125006115124),
    (100.0, 100.0, -50.11066792920844262),
    (100.0, 250.0, -23.461707867225737695),
    (100.0, 500.0, -14.002877818655854258),
    (100.0, 1000.0, -9.3710271477697378029),
    (100.0, 5000.0, -6.1775767987457226631),
    (100.0, 10000.0, -6.0241170534845215574),
    (100.0, 100000.0, -6.7254002615194548436),
    (100.0, 1000000.0, -7.831693689682583323),
    (127.0, 1e-06, -2334.1529820158738728),
    (127.0, 0.001, -1456.8690605831893358),
    (127.0, 0.1, -872.11142743340633119),
    (127.0, 0.5, -668.11234380519821048),
    (127.0, 1.0, -580.58118704419640993),
    (127.0, 2.5, -465.70201075263545328),
    (127.0, 5.0, -380.13570638668582485),
    (127.0, 10.0, -296.95966840529008013),
    (127.0, 19.0, -223.93622476054619686),
    (127.0, 20.0, -218.34623837033528335),
    (127.0, 30.0, -175.88502592139276361),
    (127.0, 45.0, -137.24022746013270274),
    (127.0, 49.0, -129.7139012411286298),
    (127.0, 51.0, -126.25637232404823706),
    (127.0, 60.0, -112.7491793157347314),
    (127.0, 100.0, -76.440323069838389264),
    (127.0, 250.0, -35.349321510616134945),
    (127.0, 500.0, -20.085571419738199144),
    (127.0, 1000.0, -12.430408184870420195),
    (127.0, 5000.0, -6.7904847012315849644),
    (127.0, 10000.0, -6.330575703348686902),
    (127.0, 100000.0, -6.7560454080732252415),
    (127.0, 1000000.0, -7.8347581912081622695),
    (128.0, 1e-06, -2353.5136700183177095),
    (128.0, 0.001, -1469.3219933066661758),
    (128.0, 0.1, -879.95919012228494402),
    (128.0, 0.5, -674.35067221534241709),
    (128.0, 1.0, -586.12637962883953403),
    (128.0, 2.5, -470.33099208009886339),
    (128.0, 5.0, -384.07182421880033669),
    (128.0, 10.0, -300.20377141511611716),
    (128.0, 19.0, -226.54238511825619477),
    (128.0, 20.0, -220.90168599986960725),
    (128.0, 30.0, -178.04236470079327934),
    (128.0, 45.0, -139.00809305586160105),
    (128.0, 49.0, -131.40179138947425749),
    (128.0, 51.0, -127.90698219324014067),
    (128.0, 60.0, -114.25056864582639593),
    (128.0, 100.0, -77.5058701134788122),
    (128.0, 250.0, -35.840271277892643016),
    (128.0, 500.0, -20.338125585486792071),
    (128.0, 1000.0, -12.557628033724644473),
    (128.0, 5000.0, -6.8159844873296066679),
    (128.0, 10000.0, -6.3433259953887566768),
    (128.0, 100000.0, -6.757320414102833569),
    (128.0, 1000000.0, -7.8348856912715668869),
    (150.0, 1e-06, -2781.318767628056601),
    (150.0, 0.001, -1745.1564747790804058),
    (150.0, 0.1, -1054.4799303262318355),
    (150.0, 0.5, -813.46384611068605657),
    (150.0, 1.0, -709.99052731329307946),
    (150.0, 2.5, -574.03822582236009059),
    (150.0, 5.0, -472.5351109732932113),
    (150.0, 10.0, -373.43894610858886941),
    (150.0, 19.0, -285.72982294166184885),
    (150.0, 20.0, -278.971524673487881),
    (150.0, 30.0, -227.32971991538815271),
    (150.0, 45.0, -179.67609681921584093),
    (150.0, 49.0, -170.29423456974012861),
    (150.0, 51.0, -165.97087107390391588),
    (150.0, 60.0, -148.99142796345211166),
    (150.0, 100.0, -102.4532143247670121),
    (150.0, 250.0, -47.532440818034218375),
    (150.0, 500.0, -26.383212068025778922),
    (150.0, 1000.0, -15.607306908178600604),
    (150.0, 5000.0, -7.4275663694747461871),
    (150.0, 10000.0, -6.6491313760071233458),
    (150.0, 100000.0, -6.7879005570952621437),
    (150.0, 1000000.0, -7.8379436927906595744),
    (200.0, 1e-06, -3764.963535897249364),
    (200.0, 0.001, -2383.4134790995781605),
    (200.0, 0.1, -1462.4784294653930987),
    (200.0, 0.5, -1140.9905484713492891),
    (200.0, 1.0, -1002.8601795271291634),
    (200.0, 2.5, -821.09550344729269364),
    (200.0, 5.0, -684.94274868296429962),
    (200.0, 10.0, -551.22006485675311672),
    (200.0, 19.0, -431.52512005378191632),
    (200.0, 20.0, -422.21806683272348794),
    (200.0, 30.0, -350.50562305559410262),
    (200.0, 45.0, -283.02571679291332266),
    (200.0, 49.0, -269.53269831219712786),
    (200.0, 51.0, -263.28659272928528218),
    (200.0, 60.0, -238.56312301724645589),
    (200.0, 100.0, -168.74436747771692047),
    (200.0, 250.0, -80.180646251981753777),
    (200.0, 500.0, -43.553752008408001293),
    (200.0, 1000.0, -24.31662594020188018),
    (200.0, 5000.0, -9.1773768157480783417),
    (200.0, 10000.0, -7.5241295507342704561),
    (200.0, 100000.0, -6.8754009490257836761),
    (200.0, 1000000.0, -7.8466936971200912613),
];
// v, kappa, I_v(kappa) / I_(v-1)(kappa)
pub const RATIO: &[(f64, f64, f64)] = &[
    (0.5, 0.0001, 0.000099999999666666672792),
    (0.5, 0.1, 0.099667994624955822614),
    (0.5, 1.0, 0.76159415595576488812),
    (0.5, 2.0, 0.96402758007581688395),
    (0.5, 10.0, 0.99999999587769276362),
    (0.5, 50.0, 1.0),
    (0.5, 100.0, 1.0),
    (0.5, 1000.0, 1.0),
    (0.5, 10000.0, 1.0),
    (1.0, 0.0001, 0.0000499999999375000025),
    (1.0, 0.1, 0.04993760398793892219),
    (1.0, 1.0, 0.44638996589653450705),
    (1.0, 2.0, 0.69777465796400798201),
    (1.0, 10.0, 0.94859982595484595897),
    (1.0, 50.0, 0.98994896737849775259),
    (1.0, 100.0, 0.99498737300516876559),
    (1.0, 1000.0, 0.9994998748748042802),
    (1.0, 10000.0, 0.99994999874987498046),
    (1.5, 0.0001, 0.00003333333331111111273),
    (1.5, 0.1, 0.033311132253989611992),
    (1.5, 1.0, 0.31303528549933130364),
    (1.5, 2.0, 0.53731472072754809588),
    (1.5, 10.0, 0.90000000412230725337),
    (1.5, 50.0, 0.98),
    (1.5, 100.0, 0.99),
    (1.5, 1000.0, 0.999),
    (1.5, 10000.0, 0.9999),
    (2.0, 0.0001, 0.000024999999989583334538),
    (2.0, 0.1, 0.024989589839412660341),
    (2.0, 1.0, 0.24019372387008974111),
    (2.0, 2.0, 0.43312742672231175832),
    (2.0, 10.0, 0.85418530832368160972),
    (2.0, 50.0, 0.9701530815756276544),
    (2.0, 100.0, 0.985037880008156842),
    (2.0, 1000.0, 0.99850037537549303311),
    (2.0, 10000.0, 0.99985000375037504923),
    (2.5, 0.0001, 0.000019999999994285715247),
    (2.5, 0.1, 0.019994288252748486614),
    (2.5, 1.0, 0.19452804946532511362),
    (2.5, 2.0, 0.36110665020670827782),
    (2.5, 10.0, 0.81111110602184292038),
    (2.5, 50.0, 0.96040816326530612245),
    (2.5, 100.0, 0.98010101010101010101),
    (2.5, 1000.0, 0.998001001001001001),
    (2.5, 10000.0, 0.99980001000100010001),
    (5.0, 0.0001, 9.999999999166667146e-6),
    (5.0, 0.1, 0.0099991667856950682765),
    (5.0, 1.0, 0.099178382399712558649),
    (5.0, 2.0, 0.19369123409479722512),
    (5.0, 10.0, 0.63366839162330539915),
    (5.0, 50.0, 0.91320959987374053651),
    (5.0, 100.0, 0.9557951728812474206),
    (5.0, 1000.0, 0.99550788285570415094),
    (5.0, 10000.0, 0.99955007875787307946),
    (10.5, 0.0001, 4.7619047618061719723e-6),
    (10.5, 0.1, 0.0047618061754997073807),
    (10.5, 1.0, 0.047520831363153612784),
    (10.5, 2.0, 0.094461180967583882151),
    (10.5, 10.0, 0.40372804974126088644),
    (10.5, 50.0, 0.81819867735902295841),
    (10.5, 100.0, 0.90453519328165899484),
    (10.5, 1000.0, 0.99004504405111703825),
    (10.5, 10000.0, 0.99900045004490546088),
    (32.0, 0.0001, 1.5624999999963009745e-6),
    (32.0, 0.1, 0.0015624963009166207456),
    (32.0, 1.0, 0.015621302598621634365),
    (32.0, 2.0, 0.031220461473644203377),
    (32.0, 10.0, 0.15271190419708313607),
    (32.0, 50.0, 0.54939448887983946137),
    (32.0, 100.0, 0.73238019409658213679),
    (32.0, 1000.0, 0.9689807403096334821),
    (32.0, 10000.0, 0.99685480421890450228),
    (64.0, 0.0001, 7.8124999999953053624e-7),
    (64.0, 0.1, 0.00078124953049935387374),
    (64.0, 1.0, 0.0078120305543653792502),
    (64.0, 2.0, 0.015621245767758887701),
    (64.0, 10.0, 0.077660976382128363632),
    (64.0, 50.0, 0.34476223411006175481),
    (64.0, 100.0, 0.54832914971433527243),
    (64.0, 1000.0, 0.93848438951094097195),
    (64.0, 10000.0, 0.99366984553771063632),
];
// x, log Gamma(x)
pub const LOG_GAMMA: &[(f64, f64)] = &[
    (0.5, 0.57236494292470008707),
    (0.75, 0.20328095143129537148),
    (0.999, 0.00057803853289138023817),
    (1.0001, -0.000057713342220471268005),
    (1.5, -0.12078223763524522235),
    (1.999, -0.00042246180069210728418),
    (2.0001, 0.000042281658112919946317),
    (2.5, 0.28468287047291915963),
    (3.7, 1.4280723266653881292),
    (10.25, 13.368023671476046295),
    (33.3, 82.603723581654943008),
    (64.5, 203.08680483582812261),
    (100.0, 359.13420536957539878),
    (150.5, 602.51395487058541195),
    (199.9, 857.40411336432824381),
];
